__all__ = ["singleton"]


import threading


def singleton(cls):
    """
    Turns ``cls`` into a lazily built, process-wide instance.

    Construction is guarded by a lock, so sweep threads racing on the first
    call still share one object. The returned factory carries ``reset()``,
    which forgets the instance.

    Example:
        >>> @singleton
        ... class Settings:
        ...     pass
        >>> first = Settings()
        >>> first is Settings()
        True
        >>> Settings.reset()
        >>> Settings() is first
        False
    """
    instances = {}
    lock = threading.Lock()

    def get_instance(*args, **kwargs):
        # arguments only matter for the call that builds the instance
        with lock:
            if cls not in instances:
                instances[cls] = cls(*args, **kwargs)
            return instances[cls]

    def reset() -> None:
        with lock:
            instances.pop(cls, None)

    get_instance.reset = reset
    return get_instance
