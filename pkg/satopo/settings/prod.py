from satopo.settings.base import *

DEBUG = False
