"""Performance analysis of cascaded multiwire-PLC / MIMO-RF DF relaying."""

__version__ = "0.1.0"
