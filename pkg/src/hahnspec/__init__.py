"""Fine spectrum of the difference operator on the Hahn sequence space."""
import importlib.metadata

try:
    __version__ = importlib.metadata.version("hahnspec")
except importlib.metadata.PackageNotFoundError:
    __version__ = "0.0.0"
