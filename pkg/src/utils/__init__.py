# Package utils