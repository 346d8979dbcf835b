def detect_and_decorate(decorator, args, kwargs):
    """
    Support both ``@eps_option`` and ``@eps_option(default=...)`` for an
    option decorator ``decorator(f, **kwargs)``.
    """
    if args and (len(args) > 1 or kwargs or not callable(args[0])):
        raise ValueError("option decorators only take keyword arguments")
    if args:
        return decorator(args[0])
    return lambda f: decorator(f, **kwargs)
