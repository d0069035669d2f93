# Empty init file to make zeta a Python package
