"""
Configuration: runtime settings and verification sweep profiles
"""
