# Copyright 2026 The anomalab Authors.

from anomalab.messages import get_message


def _get_background_argument(kwargs):
    """
    Pop the ``background`` keyword from kwargs and reject anything else.
    """
    background = False
    if 'background' in kwargs:
        background = kwargs.pop('background', False)
        if not isinstance(background, bool):
            raise TypeError(get_message('BackgroundMustBeBool'))

    if kwargs:
        raise TypeError(get_message('InvalidKwargs', list(kwargs.keys())[0].__repr__()))

    return background
