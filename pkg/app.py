"""Entry point pro ověřování kongruencí funkce p(n)."""
from __future__ import annotations
import sys
import traceback

# Načtení proměnných prostředí ze .env souboru (PARTCONG_*)
from dotenv import load_dotenv, find_dotenv


def exception_hook(exctype, value, tb):
    """Hook pro zachycení nekontrolovaných výjimek (proces pak končí kódem 1)."""
    print("=" * 80, file=sys.stderr)
    print("UNCAUGHT EXCEPTION:", file=sys.stderr)
    print("=" * 80, file=sys.stderr)
    traceback.print_exception(exctype, value, tb, file=sys.stderr)
    print("=" * 80, file=sys.stderr)


def main() -> int:
    """Hlavní funkce aplikace - načte konfiguraci a předá řízení CLI."""
    # Nastavení handleru pro nekontrolované výjimky
    sys.excepthook = exception_hook

    # Načtení konfigurace z .env souboru před vytvořením nastavení
    load_dotenv(find_dotenv(usecwd=True), override=True)

    from cli.main import main as cli_main
    return cli_main()


if __name__ == "__main__":
    sys.exit(main())
