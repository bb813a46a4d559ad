#!/usr/bin/env python3
"""
Adelic Curves - Run Script
Checks dependencies and forwards the command line to src.main
"""
import sys
from pathlib import Path

# Make the src package importable from a checkout
sys.path.insert(0, str(Path(__file__).parent))


def check_dependencies() -> bool:
    """Check if all dependencies are installed"""
    try:
        import dotenv  # noqa: F401
        import loguru  # noqa: F401
        import numpy  # noqa: F401
        import pydantic  # noqa: F401
        import sympy  # noqa: F401
    except ImportError as e:
        print(f"Missing dependency: {e}", file=sys.stderr)
        print("Please install dependencies: pip install -r requirements.txt", file=sys.stderr)
        return False
    return True


def main() -> int:
    if not check_dependencies():
        return 2
    from src.main import main as cli_main

    return cli_main(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
