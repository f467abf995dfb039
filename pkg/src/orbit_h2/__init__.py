"""Second cohomology of nilpotent orbits and Kostant-Kirillov exactness."""

__version__ = "0.1.0"
