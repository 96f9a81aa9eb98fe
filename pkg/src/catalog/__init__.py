"""
Worked examples and their loader.
"""
