__all__ = ["ROOT_LOGGER", "get_logger"]


from logging import Logger, getLogger


ROOT_LOGGER = "adsmax"


def get_logger(name: str) -> Logger:
    """Returns the child logger for a library module.

    Handlers are attached only to the root ``adsmax`` logger by
    ``core.Constructor.build_logger``; children propagate into it.

    Args:
        name (str): Usually ``__name__`` of the calling module.

    Returns:
        Logger: The ``adsmax.<name>`` logger.
    """
    return getLogger(f"{ROOT_LOGGER}.{name}")
