from dotenv import load_dotenv
import os

# Load environment variables from .env file
load_dotenv()

settings = {}

# Group closure
settings['ORBK_CAP'] = int(os.environ.get('ORBK_CAP') or 100000)  # largest group close() will enumerate

# Logging settings
settings['ORBK_LOG_LEVEL'] = (os.environ.get('ORBK_LOG_LEVEL') or 'WARNING').upper()
settings['ORBK_LOG_FILE'] = os.environ.get('ORBK_LOG_FILE') or None  # stderr only when unset

# Built-in corpus bounds used by `orbk verify`
settings['ORBK_VERIFY_MAX_WEIGHT_SUM'] = int(os.environ.get('ORBK_VERIFY_MAX_WEIGHT_SUM') or 10)
settings['ORBK_VERIFY_MAX_CYCLIC'] = int(os.environ.get('ORBK_VERIFY_MAX_CYCLIC') or 12)

# Goodness search
settings['ORBK_MAX_SPLITTINGS'] = int(os.environ.get('ORBK_MAX_SPLITTINGS') or 256)
