"""
Diagnostics app: predictive values and repeated-test posteriors.
"""
