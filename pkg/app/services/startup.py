import logging
from datetime import datetime, timezone
from typing import Dict, Any

from app.models import DegreeSequence, PairClass, PairMethod
from app.services.envelope import intersection_envelope, union_envelope
from app.services.forced_pairs import classification_matrix
from app.services.notation import format_creation
from app.services.realization import forced_pairs_oracle
from config import settings

logger = logging.getLogger(__name__)

# Sequences with known answers: forced pairs of (2,2,1,1,0), threshold (3,1,1,1,0),
# no forced pair at all for (2,1,1,1,1)
REFERENCE_SEQUENCES = [(2, 2, 1, 1, 0), (3, 1, 1, 1, 0), (2, 1, 1, 1, 1), (1, 1, 1, 1)]
ENVELOPE_REFERENCE = ((7, 6, 3, 3, 3, 3, 1, 1, 1), "IIIIDDIII", "DDDDIIIDD")


class StartupManager:
    """Runs self-checks when the API starts and keeps their outcome for /health"""

    def __init__(self):
        self.startup_time = None
        self.startup_checks = {
            "config": False,
            "classifiers": False,
            "oracle": False,
            "envelopes": False
        }
        self.startup_errors = []

    async def run_startup_checks(self) -> Dict[str, Any]:
        """Run all startup checks and return status"""
        self.startup_time = datetime.now(timezone.utc)
        self.startup_errors = []
        logger.info("=== Forced Pairs API Startup Checks ===")

        # Check 1: Configuration Validation
        try:
            logger.info("1. Validating configuration...")
            self._validate_configuration()
            self.startup_checks["config"] = True
            logger.info("✓ Configuration validated successfully")
        except Exception as e:
            self._record_failure(f"Configuration validation failed: {str(e)}")

        if not settings.STARTUP_SELF_CHECK:
            logger.info("Self-checks disabled (STARTUP_SELF_CHECK=false)")
            for name in ("classifiers", "oracle", "envelopes"):
                self.startup_checks[name] = True
            return self.get_startup_status()

        # Check 2: Both classifiers agree on the reference sequences
        try:
            logger.info("2. Cross-checking pair classifiers...")
            for terms in REFERENCE_SEQUENCES:
                d = DegreeSequence(terms)
                by_delta = classification_matrix(d, PairMethod.DELTA)
                by_graphic = classification_matrix(d, PairMethod.GRAPHIC)
                if by_delta.entries != by_graphic.entries:
                    raise Exception(f"classifiers disagree on {terms}")
            if classification_matrix(DegreeSequence((2, 1, 1, 1, 1))).forced_count():
                raise Exception("(2,1,1,1,1) reported a forced pair")
            self.startup_checks["classifiers"] = True
            logger.info(f"✓ Classifiers agree on {len(REFERENCE_SEQUENCES)} reference sequences")
        except Exception as e:
            self._record_failure(f"Classifier cross-check failed: {str(e)}")

        # Check 3: Oracle reproduces the worked example
        try:
            logger.info("3. Running realization oracle...")
            report = forced_pairs_oracle(DegreeSequence((2, 2, 1, 1, 0)))
            if report.realization_count != 2 or report.matrix.get(1, 2) is not PairClass.FORCED_EDGE:
                raise Exception(f"unexpected oracle result for (2,2,1,1,0): {report.realization_count} realizations")
            self.startup_checks["oracle"] = True
            logger.info("✓ Oracle reproduces the reference realizations")
        except Exception as e:
            self._record_failure(f"Oracle check failed: {str(e)}")

        # Check 4: Envelope creation sequences
        try:
            logger.info("4. Building reference envelopes...")
            terms, expected_i, expected_u = ENVELOPE_REFERENCE
            d = DegreeSequence(terms)
            _, creation_i = intersection_envelope(d)
            _, creation_u = union_envelope(d)
            if (format_creation(creation_i), format_creation(creation_u)) != (expected_i, expected_u):
                raise Exception(f"got {format_creation(creation_i)} / {format_creation(creation_u)}")
            self.startup_checks["envelopes"] = True
            logger.info("✓ Envelope creation sequences verified")
        except Exception as e:
            self._record_failure(f"Envelope check failed: {str(e)}")

        # Log final status
        total_checks = len(self.startup_checks)
        passed_checks = sum(self.startup_checks.values())

        if passed_checks == total_checks and not self.startup_errors:
            logger.info(f"=== Startup Complete: {passed_checks}/{total_checks} checks passed ===")
        else:
            logger.warning(f"=== Startup Complete: {passed_checks}/{total_checks} checks passed, {len(self.startup_errors)} errors ===")
            for error in self.startup_errors:
                logger.error(f"  • {error}")

        return self.get_startup_status()

    def _record_failure(self, error_msg: str):
        logger.error(f"✗ {error_msg}")
        self.startup_errors.append(error_msg)

    def _validate_configuration(self):
        """Validate critical configuration settings"""
        errors = []

        if settings.ORACLE_DEFAULT_CAP < 0:
            errors.append("ORACLE_DEFAULT_CAP must be nonnegative")
        if settings.ORACLE_DEFAULT_CAP > settings.ORACLE_MAX_CAP:
            errors.append(
                f"ORACLE_DEFAULT_CAP ({settings.ORACLE_DEFAULT_CAP}) exceeds ORACLE_MAX_CAP ({settings.ORACLE_MAX_CAP})"
            )
        if settings.MAX_SEQUENCE_LENGTH < 1:
            errors.append("MAX_SEQUENCE_LENGTH must be positive")
        if settings.ENVELOPE_CROSS_CHECK_MAX_N < 0:
            errors.append("ENVELOPE_CROSS_CHECK_MAX_N must be nonnegative")
        if settings.DEFAULT_PAIR_METHOD not in {m.value for m in PairMethod}:
            errors.append(f"DEFAULT_PAIR_METHOD must be one of delta, graphic, oracle (got {settings.DEFAULT_PAIR_METHOD})")
        if settings.LOG_LEVEL not in {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}:
            errors.append(f"LOG_LEVEL {settings.LOG_LEVEL} is not a logging level")

        if errors:
            raise Exception("; ".join(errors))

    def get_startup_status(self) -> Dict[str, Any]:
        """Get current startup status"""
        return {
            "startup_time": self.startup_time.isoformat() if self.startup_time else None,
            "uptime_seconds": (datetime.now(timezone.utc) - self.startup_time).total_seconds() if self.startup_time else 0,
            "checks": self.startup_checks,
            "checks_passed": sum(self.startup_checks.values()),
            "total_checks": len(self.startup_checks),
            "errors": self.startup_errors,
            "status": "healthy" if all(self.startup_checks.values()) and not self.startup_errors else "degraded"
        }


# Global startup manager instance
startup_manager = StartupManager()
