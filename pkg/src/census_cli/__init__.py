"""Command-line driver for the subgroup-census and hyperbolic-cover experiments."""

__version__ = "0.1.0"


def main(argv=None) -> int:
    from .main import main as _main
    return _main(argv)


__all__ = ['__version__', 'main']
