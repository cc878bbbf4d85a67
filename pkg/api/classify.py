"""Classification commands."""

import logging

import click

from services.classifier import Certificate, classify, verify_certificate
from services.errors import ClassificationError, CodecError
from utils.codec import factorization_from_dict
from .output import MalformedInput, VerificationFailed, emit, read_json, read_source

logger = logging.getLogger(__name__)


@click.command('classify')
@click.argument('source')
@click.option('--certificate', 'certificate_file', type=click.File('r'), default=None,
              help="Replay this certificate against SOURCE instead of classifying.")
def classify_cmd(source, certificate_file):
    """Reduce the factorization in SOURCE to its canonical row.

    SOURCE is inline JSON, a path, or - for stdin.
    """
    try:
        f = factorization_from_dict(read_source(source))
        given = Certificate.from_dict(read_json(certificate_file)) if certificate_file else None
    except (CodecError, KeyError, TypeError, ValueError) as e:
        raise MalformedInput(f"malformed input: {e}")

    if given is not None:
        ok = verify_certificate(f, given)
        emit({'verified': ok, 'row': given.row},
             [f"row {given.row}: {'OK' if ok else 'FAIL'}"])
        if not ok:
            raise VerificationFailed("[replay] certificate does not replay to the registry row")
        return

    try:
        certificate = classify(f)
    except ClassificationError as e:
        logger.error(f"classification failed at stage {e.stage}: {e.message}")
        raise VerificationFailed(f"[{e.stage}] {e.message}")

    mat = certificate.conjugator.mat
    emit(certificate.to_dict(), [
        f"row {certificate.row}",
        f"word: {' '.join(str(w) for w in certificate.word) or '(empty)'}",
        f"conjugator: {[list(r) for r in mat]} ab={certificate.conjugator.ab}",
        f"digest: {certificate.digest}",
    ])
