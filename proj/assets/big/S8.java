class S8 extends Abstract20 {
  public void enter() {
    new S99();
    switch (event) {
      case EV294:
        new S15();
        send("msg3");
        new S72();
        new S50();
        break;
      case EV295:
        switch (event) {
          case EV296:
            new S26();
            try {
              new S40();
              new S48();
            } catch (TimeoutException e) {
              send("msg18");
              new S31();
            } finally {
              send("msg5");
              send("msg8");
              new S100();
              new S33();
            }
            break;
          case EV297:
            send("msg18");
            break;
          case EV298:
            if (x1 > 0) {
              new S21();
              new S53();
              new S80();
              new S12();
            } else {
              send("msg16");
              send("msg2");
              send("msg19");
            }
            new S76();
            break;
        }
        new S40();
        new S39();
        break;
    }
  }
  void exit() {
    send("msg10");
    new S5();
    send("msg19");
  }
  public void handle() {
    try {
      new S45();
    } catch (IllegalStateException e) {
      new S60();
      new S15();
    } finally {
      switch (event) {
        case EV299:
          send("msg11");
          break;
        case EV300:
          send("msg3");
          break;
      }
      try {
        try {
          new S84();
          new S38();
        } catch (TimeoutException e) {
          new S56();
          send("msg6");
          log("note");
        } catch (IllegalStateException e) {
          send("msg15");
          new S37();
          new S74();
          new State();
        }
        send("msg8");
      } catch (TimeoutException e) {
        try {
          new State();
          log("note");
        } catch (IllegalStateException e) {
          log("note");
          log("note");
          send("msg3");
          log("note");
        } finally {
          new S98();
          new S16();
        }
        send("msg8");
        send("msg8");
        new S54();
      }
      new S67();
    }
    send("msg19");
    switch (event) {
      case EV301:
        send("msg18");
        try {
          try {
            send("msg12");
          } catch (IllegalStateException e) {
            new S16();
          } catch (TimeoutException e) {
            send("msg9");
            new S83();
          }
          try {
            new S71();
            new S100();
          } catch (IllegalStateException e) {
            log("note");
            send("msg17");
          } finally {
            new S68();
            send("msg8");
            new S62();
            new S94();
          }
          switch (event) {
            case EV302:
              new S77();
              send("msg4");
              send("msg6");
              break;
          }
          send("msg5");
        } finally {
          log("note");
          new S37();
          new S6();
        }
        break;
    }
  }
  public void tick() {
    new S94();
  }
  void reset() {
    send("msg17");
    send("msg6");
    new S80();
  }
  void open() {
    new S38();
  }
  public void close() {
    new S77();
  }
  void start() {
    log("note");
  }
  public void stop() {
    new S24();
    new S15();
    send("msg16");
  }
  void pause() {
    switch (event) {
      case EV303:
        new S64();
        break;
    }
    send("msg15");
    try {
      new S3();
      try {
        new S71();
      } catch (IllegalStateException e) {
        if (x0 > 0) {
          send("msg13");
          send("msg14");
        }
        try {
          new S58();
          send("msg0");
          send("msg4");
          new S39();
        } catch (IllegalStateException e) {
          new S64();
          new Helper();
          new S89();
          send("msg11");
        } catch (IOException e) {
          new S94();
          new S62();
        }
      } catch (IllegalStateException e) {
        new S76();
      }
      send("msg6");
    } catch (TimeoutException e) {
      send("msg12");
      new S68();
      if (x7 > 0) {
        new S77();
        new S31();
        new State();
        new S82();
      } else {
        new S74();
        new S55();
        if (x1 > 0) {
          log("note");
        }
      }
    }
  }
}
