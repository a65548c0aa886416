"""
Finite-prob app: exact event algebra over equally-likely sample spaces.
"""
