"""
Plugin registries for scenario parsers, report writers and strength providers.

Components register themselves on import with a decorator, so a new file
format or strength source only needs a module that is imported from its
package ``__init__``.
"""

from typing import Dict, Optional, Type


class Registry:
    """Named mapping from keys to plugin classes."""

    def __init__(self, name: str, kind: str):
        self.name = name
        self.kind = kind
        self._registry: Dict[str, Type] = {}

    def register(self, key: str):
        """
        Decorator for registering a class in the registry.

        Usage:
            @writer_registry.register("csv")
            class CSVWriter(BaseWriter):
                ...
        """
        def decorator(cls: Type) -> Type:
            if key in self._registry:
                raise ValueError(f"{key} is already registered in {self.name}")
            cls.registry_key = key
            self._registry[key] = cls
            return cls
        return decorator

    def get(self, key: str) -> Optional[Type]:
        """Get a registered class by key, or None."""
        return self._registry.get(key)

    def resolve(self, key: str) -> Type:
        """Get a registered class by key, raising with the known keys otherwise."""
        cls = self._registry.get(key)
        if cls is None:
            known = ", ".join(sorted(self._registry)) or "none"
            raise ValueError(f"Unknown {self.kind} '{key}' (available: {known})")
        return cls

    def create(self, key: str, *args, **kwargs):
        """Instantiate the class registered under key."""
        return self.resolve(key)(*args, **kwargs)

    def list_keys(self) -> list:
        """List all registered keys."""
        return list(self._registry.keys())

    def __contains__(self, key: str) -> bool:
        return key in self._registry


class ParserRegistry(Registry):
    """Registry for scenario file parsers (JSON, YAML)."""

    def __init__(self):
        super().__init__("ParserRegistry", "scenario format")


class WriterRegistry(Registry):
    """Registry for report writers (CSV, text, JSON)."""

    def __init__(self):
        super().__init__("WriterRegistry", "report format")


class StrengthRegistry(Registry):
    """Registry for joint strength providers."""

    def __init__(self):
        super().__init__("StrengthRegistry", "strength provider")


# Global registry instances
parser_registry = ParserRegistry()
writer_registry = WriterRegistry()
strength_registry = StrengthRegistry()
