from turnwkb.commands.main import main

__all__ = ["main"]
