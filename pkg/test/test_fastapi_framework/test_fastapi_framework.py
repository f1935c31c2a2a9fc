import pytest
from fastapi import APIRouter, FastAPI
from fastapi.testclient import TestClient

from src.abstractions import DomainError, NumericError, protocol_checker
from src.controllers import API_SPEC
from src.controllers.frameworks import FastApiFramework
from src.models import EndpointSpec, FastApiPostResponse


# --- Dummy handlers ---

def dummy_get_handler():
    return {"status_code": 200, "message": "GET success", "content": {}}


def dummy_domain_error_handler():
    raise DomainError("Condition 1 violated: a_DM <= d")


def dummy_numeric_error_handler():
    raise NumericError("bracket did not close", achieved_tolerance=1e-3)


def make_spec(path, handler=dummy_get_handler, methods=("GET",)):
    return EndpointSpec(
        path=path,
        handler=handler,
        required_params=list(methods),
        response_model=FastApiPostResponse,
    )


# --- Tests ---

def test_init_success():
    framework = FastApiFramework(app_type=FastAPI, title="API", version="1.0.0")
    assert isinstance(framework.get_app(), FastAPI)


def test_init_invalid_type():
    with pytest.raises(TypeError):
        FastApiFramework(app_type=dict)  # Not a FastAPI subclass


def test_add_route_success(fastapi_framework):
    fastapi_framework.add_route(make_spec("/test"))
    client = TestClient(fastapi_framework.get_app())
    response = client.get("/test")
    assert response.status_code == 200
    assert response.json() == {"status_code": 200, "message": "GET success", "content": {}}


def test_add_route_skips_command_line_only_specs(fastapi_framework):
    fastapi_framework.add_route(make_spec(None))
    client = TestClient(fastapi_framework.get_app())
    assert client.get("/openapi.json").json()["paths"] == {}


def test_add_route_missing_path(fastapi_framework):
    with pytest.raises(ValueError):
        fastapi_framework.add_route(make_spec(""))


def test_add_route_invalid_method(fastapi_framework):
    with pytest.raises(ValueError):
        fastapi_framework.add_route(make_spec("/bad-method", methods=("INVALID",)))


def test_add_route_invalid_status_code(fastapi_framework):
    with pytest.raises(ValueError):
        fastapi_framework.add_route(make_spec("/status"), status_code=9999)


def test_domain_error_maps_to_422(fastapi_framework):
    fastapi_framework.add_route(make_spec("/domain", dummy_domain_error_handler))
    response = TestClient(fastapi_framework.get_app()).get("/domain")
    assert response.status_code == 422
    assert response.json()["message"] == "Condition 1 violated: a_DM <= d"
    assert response.json()["content"] == {}


def test_numeric_error_maps_to_500(fastapi_framework):
    fastapi_framework.add_route(make_spec("/numeric", dummy_numeric_error_handler))
    response = TestClient(fastapi_framework.get_app()).get("/numeric")
    assert response.status_code == 500
    assert "achieved tolerance" in response.json()["message"]


def test_add_router(fastapi_framework):
    router = APIRouter(prefix="/extra")
    router.add_api_route("/ping", dummy_get_handler, methods=["GET"])
    fastapi_framework.add_router(router)
    response = TestClient(fastapi_framework.get_app()).get("/extra/ping")
    assert response.status_code == 200


def test_add_router_invalid_type(fastapi_framework):
    with pytest.raises(TypeError):
        fastapi_framework.add_router(None)


def test_run_application_invalid_host(fastapi_framework):
    with pytest.raises(ValueError):
        fastapi_framework.run_application(host=None)


def test_run_application_invalid_port(fastapi_framework):
    with pytest.raises(ValueError):
        fastapi_framework.run_application(port=99999)


def test_run_application_import_error(monkeypatch, fastapi_framework):
    monkeypatch.setitem(__import__("sys").modules, "uvicorn", None)
    with pytest.raises(ImportError):
        fastapi_framework.run_application()


def test_from_constructor():
    framework = FastApiFramework.from_constructor(
        app_type=FastAPI,
        title="Constructor API",
        version="2.0",
        api_spec=(make_spec("/constructor"), make_spec(None)),
    )

    client = TestClient(framework.get_app())
    response = client.get("/constructor")
    assert response.status_code == 200
    assert response.json()["message"] == "GET success"


def test_protocol_checker_accepts_registered_handlers():
    assert protocol_checker([spec.handler for spec in API_SPEC]) == []


def test_protocol_checker_names_offending_handlers():
    async def coroutine_handler(request):
        return {}

    def two_argument_handler(request, extra):
        return {}

    assert protocol_checker([dummy_get_handler, coroutine_handler, two_argument_handler]) == [
        "coroutine_handler",
        "two_argument_handler",
    ]
