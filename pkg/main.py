from argparse import ArgumentParser

from dotenv import load_dotenv
from fastapi import FastAPI  # type: ignore

load_dotenv()

from src import API_SPEC, ArgparseFramework, FastApiFramework  # noqa: E402

TITLE = "biased-evidence"
VERSION = "1.0.0"

cli = ArgparseFramework.from_constructor(app_type=ArgumentParser, title=TITLE, version=VERSION, api_spec=API_SPEC)

app = FastApiFramework.from_constructor(app_type=FastAPI, title=TITLE, version=VERSION, api_spec=API_SPEC).get_app()


if __name__ == "__main__":
    raise SystemExit(cli.run_application())
