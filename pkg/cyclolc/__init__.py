"""Linear complexity of generalized cyclotomic binary sequences of period 2p^m."""

__version__ = "0.1.0"
