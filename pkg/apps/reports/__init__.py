"""
Reports app: region tables, scenario files, rendering and the command line.
"""
