# Tests package for Kroolo AI Bot
