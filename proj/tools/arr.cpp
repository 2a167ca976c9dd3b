#include <cstdio>
int main() { std::puts("arr: cli under construction"); return 0; }
