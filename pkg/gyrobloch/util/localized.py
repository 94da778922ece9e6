import gettext

_DOMAIN = 'gyrobloch'

def L(message:str, *args, **kwds) -> str:
    return gettext.dgettext(_DOMAIN, message).format(*args, **kwds)
