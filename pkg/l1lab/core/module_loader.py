import json
import importlib
from pathlib import Path
from typing import List, Dict, Optional

from l1lab.core.interfaces import IModule, ModuleContext
from l1lab.core.exceptions import ModuleLoadError, DependencyResolutionError
from l1lab.core.path import Path as PathManager
from l1lab.core.log import log_internal
from l1lab.core.core_apis import CoreConfigAPI, CoreLoggerAPI
from l1lab.core.hook_types import LabHook
from l1lab.core.inject import inject_system_apis

CORE_CAPABILITIES = ("core_logger", "core_config", "core_path")


class ModuleLoader:
    """
    Discovers modules from their manifests, orders them by capability
    and drives their lifecycle.
    """

    def __init__(self, path: Optional[PathManager] = None):
        self._path = path or PathManager()

    def discover_modules(
        self,
        modules_config: List[Dict],
        config_api: CoreConfigAPI,
        logger_api: CoreLoggerAPI
    ) -> tuple[List[Dict], Dict[str, List[str]]]:
        """
        Discover modules listed in settings.

        Args:
            modules_config: List of module groups ({"path", "names"})
            config_api: Configuration API
            logger_api: Logger API

        Returns:
            (discovered module infos, disabled modules with their capabilities)
        """
        discovered = []
        disabled_modules = {}

        for module_group in modules_config:
            path = self._path.expand(module_group.get("path", ""))
            names = module_group.get("names", [])

            if not path.is_dir():
                log_internal(config_api, logger_api, f"Module path not found: {path}",
                             level="WARNING", tag="core")
                continue

            explicit_names = isinstance(names, list)
            if names == "all":
                names = sorted(f.name for f in path.iterdir() if (f / "manifest.json").exists())

            for name in names:
                manifest_path = path / name / "manifest.json"
                if not manifest_path.exists():
                    log_internal(config_api, logger_api, f"Module '{name}' has no manifest in {path}",
                                 level="WARNING", tag="core")
                    continue

                with open(manifest_path, 'r', encoding='utf-8') as f:
                    manifest = json.load(f)

                if not manifest.get("enabled", True):
                    if explicit_names:
                        log_internal(config_api, logger_api,
                                     f"Module '{name}' is disabled in manifest but was requested in settings",
                                     level="WARNING", tag="core")
                    if manifest.get("provides"):
                        disabled_modules[name] = manifest["provides"]
                    continue

                manifest.setdefault("id", name)
                discovered.append({"path": path / name, "manifest": manifest})

        return discovered, disabled_modules

    def resolve_order(self, modules_data: List[Dict], existing_provides: Optional[Dict[str, str]] = None,
                      force_execute: bool = False) -> List[Dict]:
        """
        Sort modules so that every provider precedes its consumers.

        System modules keep precedence over application modules.

        Raises:
            DependencyResolutionError: circular or unsatisfiable requirement
        """
        sorted_list = []
        visited = set()
        visiting = set()
        provides_map = dict(existing_provides or {})

        for m in modules_data:
            for cap in m["manifest"].get("provides", []):
                provides_map.setdefault(cap, m["manifest"]["name"])

        by_name = {m["manifest"]["name"]: m for m in modules_data}

        def visit(mod_info):
            name = mod_info["manifest"]["name"]
            if name in visiting:
                raise DependencyResolutionError(f"Circular dependency in '{name}'")
            if name in visited:
                return
            visiting.add(name)
            for req_cap in mod_info["manifest"].get("requires", []):
                if req_cap not in provides_map:
                    if not force_execute:
                        raise DependencyResolutionError(f"'{name}' requires '{req_cap}' but none provides it.")
                    continue
                provider = by_name.get(provides_map[req_cap])
                if provider is not None:
                    visit(provider)
            visiting.remove(name)
            visited.add(name)
            sorted_list.append(mod_info)

        system_first = sorted(modules_data, key=lambda m: m["manifest"].get("type") != "system")
        for mod_info in system_first:
            visit(mod_info)
        return sorted_list

    def check_requirements(
        self,
        mod_info: Dict,
        available: Dict[str, str],
        config_api: CoreConfigAPI,
        logger_api: CoreLoggerAPI,
        disabled_modules: Optional[Dict[str, List[str]]] = None
    ) -> tuple[bool, List[str]]:
        """
        Check the requirements of a module against loaded capabilities.

        Returns:
            (all_requirements_met, missing_requirements)
        """
        missing = []
        for req_cap in mod_info["manifest"].get("requires", []):
            if req_cap in available:
                continue
            missing.append(req_cap)
            for disabled_name, disabled_caps in (disabled_modules or {}).items():
                if req_cap in disabled_caps:
                    log_internal(config_api, logger_api,
                                 f"Module '{mod_info['manifest']['name']}' requires '{req_cap}' "
                                 f"which is provided by disabled module '{disabled_name}'",
                                 level="WARNING", tag="core")
                    break
        return not missing, missing

    def instantiate(self, mod_info: Dict) -> IModule:
        """
        Create the module's entrypoint instance.

        Raises:
            ModuleLoadError: missing entrypoint or import failure
        """
        manifest = mod_info["manifest"]
        mod_name = manifest["name"]
        class_name = manifest.get("entrypoint")
        if not class_name:
            raise ModuleLoadError(f"Module '{mod_name}' missing entrypoint.")

        import_path = self._import_path(Path(mod_info["path"]))
        try:
            module_lib = importlib.import_module(f"{import_path}.module")
            instance: IModule = getattr(module_lib, class_name)()
        except Exception as e:
            raise ModuleLoadError(f"Failed to load '{mod_name}': {e}") from e

        instance.name = mod_name
        instance.id = manifest.get("id", mod_name)
        instance.provides = list(manifest.get("provides", []))
        instance.requires = list(manifest.get("requires", []))
        return instance

    def _import_path(self, module_path: Path) -> str:
        package_root = self._path.l1lab
        try:
            rel_path = module_path.resolve().relative_to(package_root)
            return "l1lab." + ".".join(rel_path.parts)
        except ValueError:
            pass
        try:
            rel_path = module_path.resolve().relative_to(self._path.app)
        except ValueError:
            rel_path = Path(module_path.name)
        return ".".join(rel_path.parts)

    async def load_modules(
        self,
        modules_data: List[Dict],
        modules: Dict[str, IModule],
        context: ModuleContext,
        logger_ref: list,
        config_ref: list,
        disabled_modules: Optional[Dict[str, List[str]]] = None
    ) -> List[str]:
        """
        Load modules in dependency order.

        A module whose requirements are not met is skipped unless its
        manifest sets ``forced_execute``. Load failures are logged and
        the module is left out.

        Returns:
            Names of loaded modules in load order
        """
        available = {cap: "core" for cap in CORE_CAPABILITIES}
        loaded = []

        try:
            ordered = self.resolve_order(modules_data, available, force_execute=True)
        except DependencyResolutionError as e:
            log_internal(config_ref[0], logger_ref[0], f"Dependency resolution error: {e}", level="ERROR", tag="core")
            ordered = modules_data

        for mod_info in ordered:
            mod_name = mod_info["manifest"]["name"]
            is_forced = mod_info["manifest"].get("forced_execute", False)

            met, missing = self.check_requirements(mod_info, available, config_ref[0], logger_ref[0], disabled_modules)
            if not met:
                log_internal(config_ref[0], logger_ref[0],
                             f"Module '{mod_name}' requires: {', '.join(missing)} (not found)",
                             level="WARNING", tag="core")
                if not is_forced:
                    log_internal(config_ref[0], logger_ref[0], f"Skipping module '{mod_name}' (not forced)",
                                 level="CORE", tag="core")
                    continue

            try:
                instance = self.instantiate(mod_info)
                instance._context = context
                instance._is_system = mod_info["manifest"].get("type") == "system"
                await instance.load(context)
                inject_system_apis(instance, context.services, logger_ref, config_ref)
            except Exception as e:
                log_internal(config_ref[0], logger_ref[0], f"Module '{mod_name}' failed to load: {e}",
                             level="ERROR", tag="core")
                continue

            modules[mod_name] = instance
            loaded.append(mod_name)
            for cap in instance.provides:
                available[cap] = mod_name
            log_internal(config_ref[0], logger_ref[0], f"Module '{mod_name}' loaded", level="CORE", tag="core")

        return loaded

    async def start_all_modules(self, modules: Dict[str, IModule], names: List[str],
                                logger_ref: list, config_ref: list, hooks_manager):
        """Start modules in load order."""
        for mod_name in names:
            try:
                await modules[mod_name].start(modules[mod_name]._context)
                await hooks_manager.dispatch(LabHook.ON_MODULE_LOADED, modules[mod_name])
            except Exception as e:
                log_internal(config_ref[0], logger_ref[0], f"Error starting module '{mod_name}': {e}",
                             level="ERROR", tag="core")

    async def ready_all_modules(self, modules: Dict[str, IModule], names: List[str],
                                logger_ref: list, config_ref: list, hooks_manager):
        """Call ready on every started module, then dispatch ON_ALL_MODULES_READY."""
        for mod_name in names:
            try:
                await modules[mod_name].ready(modules[mod_name]._context)
            except Exception as e:
                log_internal(config_ref[0], logger_ref[0], f"Error calling ready on module '{mod_name}': {e}",
                             level="ERROR", tag="core")
        await hooks_manager.dispatch(LabHook.ON_ALL_MODULES_READY)
