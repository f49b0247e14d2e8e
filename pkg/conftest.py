# Puts the repository root on sys.path so tests import hochschild, api and run directly.
