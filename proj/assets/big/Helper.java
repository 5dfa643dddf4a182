class Helper {
  void help() {
    new S1();
  }
}
