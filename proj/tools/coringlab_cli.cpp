// Placeholder; the CLI is wired up once the engine layers are in place.
int main() { return 0; }
