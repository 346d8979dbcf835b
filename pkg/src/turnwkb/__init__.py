from turnwkb.commands import main
from turnwkb.version import __version__

__all__ = ["main", "__version__"]
