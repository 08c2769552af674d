// placeholder while the library is under construction
int main() { return 0; }
