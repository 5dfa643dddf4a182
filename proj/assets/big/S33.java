class S33 extends Abstract7 {
  public void enter() {
    try {
      send("msg8");
      send("msg4");
    } catch (TimeoutException e) {
      new S78();
      new State();
      send("msg19");
      try {
        new S77();
        try {
          send("msg2");
          new S82();
          send("msg18");
        } finally {
          new S44();
          new S13();
        }
      } catch (IllegalStateException e) {
        send("msg17");
        switch (event) {
          case EV920:
            send("msg13");
            break;
          case EV921:
            send("msg6");
            send("msg4");
            new S76();
            send("msg4");
            break;
        }
      } catch (TimeoutException e) {
        send("msg15");
        try {
          send("msg4");
          new S37();
          new S26();
        } catch (IllegalStateException e) {
          new State();
          new S90();
          send("msg1");
        }
        new S41();
      }
    } catch (IllegalStateException e) {
      log("note");
      new S85();
    }
    new S42();
    send("msg5");
    if (x5 > 0) {
      new S11();
    }
  }
  public void exit() {
    send("msg4");
    send("msg9");
    new S36();
  }
  void handle() {
    new Helper();
    if (x0 > 0) {
      log("note");
      new S67();
    }
    new S26();
  }
  void tick() {
    new S84();
    new Helper();
    send("msg15");
  }
  void reset() {
    log("note");
    new S97();
  }
  void open() {
    new S5();
  }
  void close() {
    new S86();
    new S72();
    switch (event) {
      case EV922:
        switch (event) {
          case EV923:
            new Helper();
            break;
        }
        break;
      case EV924:
        send("msg13");
        try {
          new S25();
          try {
            new S100();
            new S56();
          } catch (IOException e) {
            log("note");
          }
          new S66();
          switch (event) {
            case EV925:
              new S60();
              new S17();
              new S99();
              break;
          }
        } catch (IllegalStateException e) {
          new S53();
          try {
            new S61();
            new S96();
          } catch (TimeoutException e) {
            new S96();
            new S49();
            log("note");
          } catch (TimeoutException e) {
            log("note");
            log("note");
            send("msg3");
            send("msg0");
          }
        } finally {
          try {
            new S77();
            new S5();
          } catch (TimeoutException e) {
            new S26();
            send("msg7");
            new S98();
          } catch (TimeoutException e) {
            new S72();
            new S100();
            send("msg3");
            log("note");
          }
        }
        switch (event) {
          case EV926:
            try {
              new State();
              send("msg3");
            } catch (IllegalStateException e) {
              new S3();
              new S85();
              send("msg6");
            } finally {
              send("msg8");
            }
            try {
              new Helper();
            } catch (IOException e) {
              new S73();
              new S17();
            }
            send("msg11");
            send("msg16");
            break;
          case EV927:
            new S2();
            if (x8 > 0) {
              new S48();
              new S32();
              send("msg4");
              new S73();
            } else {
              log("note");
              send("msg10");
              log("note");
              send("msg7");
            }
            new S2();
            log("note");
            break;
        }
        new S43();
        break;
    }
    new S57();
  }
  void start() {
    send("msg3");
  }
  public void stop() {
    switch (event) {
      case EV928:
        try {
          new S30();
          new S41();
          try {
            new S70();
            new S49();
          } finally {
            new S18();
          }
        } catch (IllegalStateException e) {
          switch (event) {
            case EV929:
              new S79();
              new S62();
              new S83();
              break;
          }
          try {
            new S57();
          } catch (IllegalStateException e) {
            send("msg15");
            new S14();
          } catch (IOException e) {
            send("msg8");
            new S66();
            new Helper();
          }
          if (x9 > 0) {
            send("msg15");
            new S53();
            send("msg2");
          } else {
            new Helper();
            new S8();
          }
          new S95();
        } finally {
          new S92();
          try {
            new S56();
            new S65();
          } catch (IOException e) {
            send("msg1");
          }
          send("msg18");
          new S4();
        }
        send("msg5");
        if (x4 > 0) {
          new S19();
          switch (event) {
            case EV930:
              new S73();
              new S55();
              break;
            case EV931:
              new Helper();
              new S15();
              send("msg12");
              send("msg18");
              break;
            case EV932:
              new S55();
              send("msg11");
              new S46();
              break;
          }
        }
        break;
      case EV933:
        new S45();
        new S52();
        break;
      case EV934:
        new S74();
        try {
          switch (event) {
            case EV935:
              log("note");
              break;
            case EV936:
              new S50();
              new S81();
              send("msg13");
              break;
          }
          try {
            new S28();
            send("msg8");
            send("msg11");
            send("msg2");
          } catch (IOException e) {
            new S45();
          } finally {
            log("note");
            new S99();
          }
          switch (event) {
            case EV937:
              new S3();
              new S6();
              send("msg8");
              break;
            case EV938:
              send("msg13");
              new S82();
              new S75();
              break;
          }
        } catch (TimeoutException e) {
          if (x7 > 0) {
            send("msg12");
            new S12();
          }
          switch (event) {
            case EV939:
              new S16();
              send("msg19");
              break;
            case EV940:
              send("msg6");
              new State();
              new S88();
              break;
            case EV941:
              new S46();
              send("msg0");
              new S62();
              send("msg9");
              break;
          }
          new Helper();
        } catch (IOException e) {
          send("msg8");
          if (x3 > 0) {
            send("msg9");
            send("msg13");
            log("note");
            new S35();
          } else {
            new S31();
          }
        }
        log("note");
        new S43();
        break;
    }
    send("msg13");
  }
  void pause() {
    new S84();
  }
}
