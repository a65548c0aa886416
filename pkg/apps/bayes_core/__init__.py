"""
Bayes-core app: Bayes' Theorem over finite partitions and its extension to
conditionally independent evidence.
"""
