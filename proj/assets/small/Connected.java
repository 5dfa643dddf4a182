class Connected extends Connection {
  void transfer() {
    try {
      send("data");
    } catch (IOException e) {
      new Idle();
      send("drop");
    }
  }
  void hangup() {
    if (graceful) {
      new Idle();
    } else {
      new Connection();
    }
  }
}
