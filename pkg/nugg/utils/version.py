from importlib.metadata import PackageNotFoundError, version

OWN_PACKAGE = "nugg"


def _resolve_package_version(package: str) -> str:
    return version(package)


def resolve_own_package_version() -> str:
    try:
        return _resolve_package_version(OWN_PACKAGE)
    except PackageNotFoundError:
        # running from a source checkout
        return "0.0.0+unknown"
