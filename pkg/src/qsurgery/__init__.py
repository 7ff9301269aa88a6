"""qsurgery: synthesis of resource-efficient code-surgery ancilla systems."""

__version__ = "0.1.0"
