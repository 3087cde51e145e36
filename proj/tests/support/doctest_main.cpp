#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>
#include <pthread.h>

namespace {

struct Args {
  int argc;
  char** argv;
  int code = 0;
};

void* run(void* p) {
  auto* a = static_cast<Args*>(p);
  a->code = doctest::Context(a->argc, a->argv).run();
  return nullptr;
}

}  // namespace

// Searches recurse once per move; run the suite on a large stack.
int main(int argc, char** argv) {
  Args args{argc, argv};
  pthread_attr_t attr;
  pthread_attr_init(&attr);
  pthread_attr_setstacksize(&attr, std::size_t{1} << 30);
  pthread_t thread;
  if (pthread_create(&thread, &attr, run, &args) != 0) return 1;
  pthread_join(thread, nullptr);
  pthread_attr_destroy(&attr);
  return args.code;
}
