# Empty init file to make parser a Python package
