from .app import create_app
from .sessions import RemoteAgent, Session, SessionError, SessionManager

__all__ = ["create_app", "RemoteAgent", "Session", "SessionError",
           "SessionManager"]
