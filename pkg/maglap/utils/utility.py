import numpy as np

from maglap.core.exceptions import InvalidParam


FLOAT_FORMAT = '%.17g'


def parse_float_list(text):
    """
    Parse a comma separated list of floats.

    Parameters
    ----------
    text: str or list of str, required
        e.g. ``"15,25,35"``; a list (repeated flag) is joined first

    Returns
    -------
    values: list of float
    """
    if isinstance(text, (list, tuple)):
        text = ','.join(str(t) for t in text)
    try:
        values = [float(t) for t in str(text).split(',') if t.strip()]
    except ValueError:
        raise InvalidParam(f'cannot parse {text!r} as a list of numbers')
    if not values:
        raise InvalidParam('empty list of numbers')
    if not np.all(np.isfinite(values)):
        raise InvalidParam(f'non-finite value in {text!r}')
    return values


def parse_grid(text):
    """
    Parse a grid as ``start:stop:count`` (inclusive, equidistant) or a comma list.

    Returns
    -------
    grid: numpy array
    """
    text = str(text)
    if ':' not in text:
        return np.asarray(parse_float_list(text), dtype=float)
    parts = text.split(':')
    if len(parts) != 3:
        raise InvalidParam(f'grid {text!r} must look like start:stop:count')
    start, stop = parse_float_list(parts[0])[0], parse_float_list(parts[1])[0]
    try:
        count = int(parts[2])
    except ValueError:
        raise InvalidParam(f'grid count in {text!r} must be an integer')
    return linear_grid(start, stop, count)


def linear_grid(start, stop, steps):
    """``steps`` equidistant values from start to stop inclusive; a single step gives [start]."""
    if int(steps) != steps or steps < 1:
        raise InvalidParam(f'number of grid steps must be a positive integer, got {steps}')
    if stop < start:
        raise InvalidParam(f'grid end {stop} lies below its start {start}')
    if steps == 1:
        return np.array([float(start)])
    return np.linspace(start, stop, int(steps))
