class Idle extends State {
  public void connect() {
    new Connecting();
    send("dial");
  }
}
