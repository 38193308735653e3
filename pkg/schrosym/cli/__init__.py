"""schrosym command line tool."""
