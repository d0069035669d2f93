# Empty init file to make series a Python package
