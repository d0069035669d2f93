# Empty init file to make utils a Python package
