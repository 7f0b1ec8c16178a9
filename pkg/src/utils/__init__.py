from .version_info import get_version

__all__ = ["get_version"]
