import logging

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from . import __version__
from .commands import COMMANDS, run_command
from .config import configure_logging, get_settings
from .errors import WeylError
from .models import CommandRecord, CommandRequest

# Configure logging
configure_logging()
logger = logging.getLogger(__name__)

# Initialize FastAPI app
app = FastAPI(
    title="homweyl API",
    description="Exact computation in the hom-associative Weyl algebras A_n^k",
    version=__version__,
    docs_url="/docs",
    redoc_url="/redoc",
)

app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)


@app.on_event("startup")
async def startup_event():
    """Load settings on startup"""
    settings = get_settings()
    logger.info(f"Starting homweyl API (seed={settings.seed}, degree_cap={settings.degree_cap})")


@app.get("/", tags=["Root"])
async def root():
    """Root endpoint with API information"""
    return {
        "message": "homweyl: hom-associative Weyl algebras over Q",
        "version": __version__,
        "docs": "/docs",
        "commands": sorted(COMMANDS),
    }


@app.get("/health", tags=["Health"])
async def health_check():
    """Health check endpoint"""
    return {"status": "healthy", "version": __version__}


@app.post("/commands/{name}", response_model=CommandRecord, tags=["Commands"])
async def execute_command(name: str, request: CommandRequest):
    """
    Run one command of the CLI table and return its JSON record.

    A failed check is still a 200 response with `passed: false`; malformed
    input is a 400 and an unknown command a 404.
    """
    if name not in COMMANDS:
        raise HTTPException(status_code=404, detail=f"Unknown command: {name}")
    try:
        run = run_command(name, request)
    except WeylError as e:
        logger.warning(f"Command {name} rejected its input: {e}")
        return JSONResponse(
            status_code=400,
            content={"error": True, "message": type(e).__name__, "detail": str(e)},
        )
    return run.record


@app.exception_handler(Exception)
async def global_exception_handler(request, exc):
    """Global exception handler"""
    logger.error(f"Unhandled exception: {exc}")
    return JSONResponse(
        status_code=500,
        content={"error": True, "message": "Internal server error", "detail": str(exc)},
    )


if __name__ == "__main__":
    import uvicorn

    settings = get_settings()
    uvicorn.run(app, host=settings.host, port=settings.port)
