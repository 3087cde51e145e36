#include <pthread.h>

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "seqgame/cli.hpp"

namespace {

struct Job {
  std::vector<std::string> args;
  int code = 0;
};

void* run(void* p) {
  auto* job = static_cast<Job*>(p);
  job->code = seqgame::run_cli(job->args, std::cout, std::cerr);
  return nullptr;
}

}  // namespace

int main(int argc, char** argv) {
  Job job;
  job.args.assign(argv + 1, argv + argc);
  // Game trees are searched recursively; deep compounds need a large stack.
  pthread_attr_t attr;
  pthread_attr_init(&attr);
  pthread_attr_setstacksize(&attr, std::size_t{1} << 30);
  pthread_t thread;
  if (pthread_create(&thread, &attr, run, &job) != 0) {
    std::perror("pthread_create");
    return 2;
  }
  pthread_join(thread, nullptr);
  pthread_attr_destroy(&attr);
  std::cout.flush();
  return job.code;
}
