from typing import Any, Optional


class ModuleRegistry:
    """
    Registry for module services.

    Key-value store through which modules publish their services
    (``norm_service``, ``lp_service``, ...) and the kernel publishes
    ``core_config``, ``core_logger`` and ``core_path``.
    """

    def __init__(self):
        self._services = {}

    def set(self, key: str, instance: Any):
        """
        Register a service with a string key.

        Args:
            key: The service identifier
            instance: The service instance to register
        """
        self._services[key] = instance

    def get(self, key: str) -> Optional[Any]:
        """
        Retrieve a service by string key.

        Returns:
            The service instance if found, None otherwise
        """
        return self._services.get(key)

    def require(self, key: str) -> Any:
        """
        Retrieve a service that must exist.

        Raises:
            KeyError: If nothing is registered under ``key``
        """
        if key not in self._services:
            raise KeyError(f"Service '{key}' is not registered")
        return self._services[key]

    def has(self, key: str) -> bool:
        return key in self._services

    def remove(self, key: str):
        self._services.pop(key, None)

    def keys(self) -> list:
        return sorted(self._services)
