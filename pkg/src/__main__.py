"""Main entry point for python -m outerproj."""

from cli import main_dispatch

if __name__ == "__main__":
    main_dispatch()
