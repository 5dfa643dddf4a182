class Connecting extends Connection {
  void handle() {
    switch (result) {
      case OK:
        new Connected();
        break;
      case BUSY:
        new Idle();
        break;
    }
  }
}
