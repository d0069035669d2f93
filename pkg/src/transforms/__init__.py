# Empty init file to make transforms a Python package
