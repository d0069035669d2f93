"""
Shared pytest configuration
"""

from hypothesis import settings

# exact big-integer arithmetic makes some examples slow on first run
settings.register_profile("zeta", deadline=None)
settings.load_profile("zeta")
