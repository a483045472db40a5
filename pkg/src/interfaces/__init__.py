from .benchmark_sample import BenchmarkSample
from .factoring_budget import FactoringBudget
from .factoring_oracle import FactoringOracle


__all__ = ['BenchmarkSample', 'FactoringBudget', 'FactoringOracle']
