# Test package for pairing-functions
