import logging

__version__ = "0.3.0"


def configure_logging(level="WARNING"):
    root = logging.getLogger("partfin")
    root.setLevel(level.upper() if isinstance(level, str) else level)

    if not root.handlers:
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter("%(asctime)s %(levelname)s %(name)s: %(message)s"))
        root.addHandler(handler)

    return root
