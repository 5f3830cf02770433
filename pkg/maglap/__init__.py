from maglap.version import __version__
from . import core, models, metrics

__all__ = ['__version__', 'core', 'models', 'metrics']
