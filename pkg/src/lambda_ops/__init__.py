# Empty init file to make lambda_ops a Python package
