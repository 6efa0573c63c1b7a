from .fetcher import DocumentFetcher

__all__ = ['DocumentFetcher']
