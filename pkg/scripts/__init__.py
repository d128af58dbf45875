"""
Scripts module - Command line entry points for dihom.
"""
