"""
Command-line interface for OU matrix braid analysis
"""
