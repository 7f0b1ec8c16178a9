from .config import DevelopmentConfig, ProductionConfig, TestConfig, BaseConfig, get_configuration

__all__ = ["DevelopmentConfig", "ProductionConfig", "TestConfig", "BaseConfig", "get_configuration"]
