"""RainbowIndex - exact k-rainbow index toolkit"""

__version__ = "0.1.0"
