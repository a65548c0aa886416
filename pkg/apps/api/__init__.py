"""
API app: versioned routing and the standard response envelope.
"""
