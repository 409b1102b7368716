// implemented later in the build-up
