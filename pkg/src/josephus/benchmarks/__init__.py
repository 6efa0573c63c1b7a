from .harness import Benchmark, counter_ratios, geometric_sizes

__all__ = ['Benchmark', 'geometric_sizes', 'counter_ratios']
