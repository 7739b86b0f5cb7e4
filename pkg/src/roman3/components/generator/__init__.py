"""
Seeded instance generator components.
"""
