import logging
import os
import platform
import sys

import sentry_sdk
from sentry_sdk.integrations.atexit import AtexitIntegration

from nugg.utils.settings import NuggSettings
from nugg.utils.version import resolve_own_package_version

logger = logging.getLogger(__name__)


def at_exit_callback(pending: int, timeout: int) -> None:
    sys.stderr.flush()


def setup_analytics() -> bool:
    settings = NuggSettings()
    dsn = settings.analytics_id if settings.enable_analytics else ""
    if not dsn:
        logger.debug("usage metrics are disabled")
        return False

    try:
        sentry_sdk.init(
            # Only the exception name and its stacktrace are reported.
            send_default_pii=False,
            send_client_reports=False,
            request_bodies="never",
            ignore_errors=[
                KeyboardInterrupt,
                MemoryError,
                NotImplementedError,
            ],
            integrations=[AtexitIntegration(callback=at_exit_callback)],
            release=resolve_own_package_version(),
            traces_sample_rate=1.0,
            dsn=dsn,
        )
        sentry_sdk.set_user(None)

        sentry_sdk.set_context(
            "nugg",
            {
                "uname": str(platform.uname()),
                "cpu_count": os.cpu_count(),
                "python": platform.python_version(),
            },
        )
        sentry_sdk.set_tag("architecture", platform.machine())
        sentry_sdk.set_tag("system", platform.system())
        sentry_sdk.set_tag("threads", settings.threads)
    except Exception:  # no qa
        logger.warning("usage metrics are disabled")
        return False

    return True
