"""MultiWiki: temporal similarity analysis of interlingual Wikipedia article pairs."""

__version__ = "0.1.0"
