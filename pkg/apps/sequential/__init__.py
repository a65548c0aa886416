"""
Sequential app: the threshold stopping rule for repeated diagnostic tests.
"""
