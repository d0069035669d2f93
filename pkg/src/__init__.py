"""
Core library of the zeta calculator
"""
