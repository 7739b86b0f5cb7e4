"""
Reduction components for the X3C and Dominating Set constructions.
"""
